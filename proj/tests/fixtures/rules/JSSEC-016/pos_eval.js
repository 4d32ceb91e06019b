function parse(json_string) {
  return eval('(' + json_string + ')');
}
module.exports = parse;
