const express = require('express');
const app = express();
app.post('/login', (req, res) => {
  res.cookie('sid', req.body.sid, { httpOnly: true });
  res.cookie('theme', 'dark');
  res.cookie('pref', 'x', { secure: true });
  res.end();
});
