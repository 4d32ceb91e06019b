let password = '';
const token = 'changeme';
const passwordField = 'input-password';
const message = 'enter your password';
module.exports = { password, token, passwordField, message };
