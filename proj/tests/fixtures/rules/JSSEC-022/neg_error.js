function fail(err) {
  console.error(err.stack);
  return err.message;
}
module.exports = fail;
