function buildRow(cells) {
  const tr = document.createElement('tr');
  const a = document.createElement('td');
  const b = document.createElement('td');
  a.appendChild(document.createTextNode(cells[0]));
  b.appendChild(document.createTextNode(cells[1]));
  tr.appendChild(a);
  tr.appendChild(b);
  return tr;
}
module.exports = buildRow;
