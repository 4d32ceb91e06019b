const crypto = require('crypto');
function digest(data) {
  return crypto.createHash('md5').update(data).digest('hex');
}
function legacy(data) {
  return crypto.createHash('sha1').update(data).digest('hex');
}
module.exports = { digest, legacy };
