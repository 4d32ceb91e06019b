function connect(host, port, user, pass, db, timeout) {
  return [host, port, user, pass, db, timeout].join(':');
}
module.exports = connect;
