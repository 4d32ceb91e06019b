function seal(text, secretRef) {
  return CryptoJS.DES.encrypt(text, secretRef).toString();
}
const cipher = require('crypto').createCipheriv('aes-128-ecb', Buffer.alloc(16), null);
module.exports = { seal, cipher };
