const fs = require('fs');
const path = require('path');
function load(req) {
  const base = path.basename(req.query.name);
  return [fs.readFileSync('/data/config.json'), fs.readFileSync('/data/' + base)];
}
module.exports = load;
