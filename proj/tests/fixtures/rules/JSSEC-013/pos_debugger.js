function check(value) {
  debugger;
  if (!value) alert('missing value');
  return value;
}
module.exports = check;
