function helper(a) {
  return a * 2;
}
function used(a) {
  return a + 1;
}
module.exports = { used };
