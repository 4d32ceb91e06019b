function label(code) {
  switch (code) {
    case 1:
      return 'one';
    default:
      return 'other';
  }
}
module.exports = label;
