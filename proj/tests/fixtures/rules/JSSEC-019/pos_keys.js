const express = require('express');
const app = express();
const store = {};
app.post('/set', (req, res) => {
  store[req.body.section][req.body.key] = req.body.value;
  res.end();
});
