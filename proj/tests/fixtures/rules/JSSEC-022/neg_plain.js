function login(name, attempts) {
  console.log('login attempt', name, attempts);
  console.log('password reset requested');
  return name;
}
module.exports = login;
