function handler(req, res, next) {
  next();
}
function onError(err, req, res, next) {
  res.json({ message: err.message, trace: err.stack });
  return next;
}
module.exports = { handler, onError };
