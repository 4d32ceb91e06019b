const express = require('express');
const app = express();
app.post('/login', (req, res) => {
  res.cookie('sid', req.body.sid, { httpOnly: true, secure: true, sameSite: 'strict' });
  res.end();
});
const hasCookie = document.cookie.indexOf('sid=') >= 0;
module.exports = hasCookie;
