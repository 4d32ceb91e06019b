function label(code) {
  switch (code) {
    case 1:
      return 'one';
    case 2:
      return 'two';
  }
  return '';
}
module.exports = label;
