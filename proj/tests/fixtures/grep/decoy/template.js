const help = `call eval(x) only in tests`;
/*
 * console.log(help);
 * debugger;
 */
function show(x) {
  document.write(x); // document.write is flagged
  return eval(x); // eval here
}
module.exports = { help, show };
