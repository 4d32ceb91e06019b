function connect({ host, port, user, pass, db, timeout, retries }) {
  return [host, port, user, pass, db, timeout, retries].join(':');
}
module.exports = connect;
