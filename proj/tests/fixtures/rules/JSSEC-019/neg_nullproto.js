function merge(source) {
  const target = Object.create(null);
  for (const key in source) {
    target[key] = source[key];
  }
  return target;
}
const copy = merge(JSON.parse('{"a": 1}'));
const table = {};
table['fixed']['name'] = copy.a;
module.exports = copy;
