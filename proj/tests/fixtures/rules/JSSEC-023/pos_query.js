const fs = require('fs');
const express = require('express');
const app = express();
app.get('/file', (req, res) => {
  fs.readFile('/data/' + req.query.name, (err, buf) => res.end(buf));
});
