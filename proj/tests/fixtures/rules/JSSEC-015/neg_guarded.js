const allowed = ['/home', '/account'];
function go(target) {
  if (!allowed.includes(target)) {
    return;
  }
  window.location.href = target;
}
module.exports = go;
