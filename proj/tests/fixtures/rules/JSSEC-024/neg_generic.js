const express = require('express');
const app = express();
app.get('/item', (req, res) => {
  try {
    res.json({ id: req.query.id });
  } catch (err) {
    console.error(err);
    res.status(500).send('Internal error');
  }
});
