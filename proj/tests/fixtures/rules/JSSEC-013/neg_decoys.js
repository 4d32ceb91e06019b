// console.log('debug');
const hint = 'remove debugger statements';
/* debugger; */
const console2 = { log: (s) => s };
console2.log(hint);
