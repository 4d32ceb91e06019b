function label(code) {
  switch (code) {
    default:
      return 'other';
    case 1:
      return 'one';
  }
}
const text = 'switch (x) { case 1: }';
module.exports = { label, text };
