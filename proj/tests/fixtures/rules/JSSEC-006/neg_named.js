const fs = require('fs');
function third(e, c) {
  fs.writeFile('out.txt', c, done);
}
function second(e, b) {
  fs.readFile('c.txt', third);
}
function first(e, a) {
  fs.readFile('b.txt', second);
}
function done(e) {
  process.stdout.write(String(e));
}
fs.readFile('a.txt', first);
