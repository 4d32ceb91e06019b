const mode = process.env.MODE;
if (false) {
  migrate(mode);
}
while (0) {
  migrate(mode);
}
function migrate(m) {
  return m;
}
module.exports = migrate;
