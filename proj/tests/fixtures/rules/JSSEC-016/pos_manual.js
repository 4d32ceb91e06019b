function payload(name, age) {
  return '{"name":"' + name + '","age":' + age + '}';
}
module.exports = payload;
