function grant(user) {
  user.__proto__.isAdmin = true;
  Object.prototype.polluted = 1;
}
module.exports = grant;
