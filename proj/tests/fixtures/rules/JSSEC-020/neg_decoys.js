// md5 was replaced by sha256
const md5Note = 'md5 is not used here';
const crypto = require('crypto');
const h = crypto.createHash('sha512');
module.exports = { md5Note, h };
