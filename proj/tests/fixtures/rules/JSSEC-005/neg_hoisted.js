start();
function start() {
  return next(1);
}
function next(n) {
  if (n > 10) return n;
  return next(n + 1);
}
if (process.env.DEBUG === '1') {
  start();
}
