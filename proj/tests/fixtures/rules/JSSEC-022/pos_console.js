function login(username, password) {
  console.log('login attempt', username, password);
  return username;
}
module.exports = login;
