function audit(session) {
  console.info({ token: session.authToken });
  console.debug(document.cookie);
}
module.exports = audit;
