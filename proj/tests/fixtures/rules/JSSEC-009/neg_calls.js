const refresh = () => 1;
setTimeout(refresh, 1000);
const add = (a, b) => a + b;
const page = { evaluate: (s) => s.length };
page.evaluate('x');
module.exports = add;
