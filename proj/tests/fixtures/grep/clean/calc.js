function calc(expr) {
  console.log(expr);
  const value = eval(expr);
  console.log(value);
  return value;
}

function trace(step) {
  debugger;
  return step + 1;
}

module.exports = { calc, trace };
