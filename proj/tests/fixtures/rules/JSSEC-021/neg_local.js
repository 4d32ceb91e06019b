const dev = fetch('http://localhost:3000/api');
const svg = document.createElementNS('http://www.w3.org/2000/svg', 'svg');
const doc = 'see http://example.com/docs for details';
module.exports = { dev, svg, doc };
