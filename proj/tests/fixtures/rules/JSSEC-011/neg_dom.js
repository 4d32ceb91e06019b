function buildRow(cells) {
  const tr = document.createElement('tr');
  const a = document.createElement('td');
  a.textContent = cells[0];
  tr.appendChild(a);
  tr.appendChild(document.createElement('td'));
  return tr;
}
module.exports = buildRow;
