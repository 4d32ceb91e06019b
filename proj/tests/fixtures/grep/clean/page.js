const title = document.title;
document.write(title);
if (title.length > 3) {
  document.write(title.length);
  debugger;
}
const run = (code) => eval(code);
run(title);
console.log(run);
