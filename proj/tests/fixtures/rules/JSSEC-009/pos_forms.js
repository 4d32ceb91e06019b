const body = 'return a + b';
const add = new Function('a', 'b', body);
setTimeout('refresh()', 1000);
setInterval('poll()', 5000);
module.exports = add;
