function payload(user) {
  return `{"user": "${user.name}"}`;
}
module.exports = payload;
