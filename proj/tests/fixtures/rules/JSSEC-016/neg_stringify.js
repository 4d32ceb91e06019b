function payload(name, age) {
  return JSON.stringify({ name, age });
}
module.exports = payload;
