function remember(sessionId) {
  document.cookie = 'session=' + encodeURIComponent(sessionId) + '; path=/; Secure; SameSite=Strict';
}
module.exports = remember;
