function show() {
  const name = location.hash.substring(1);
  document.getElementById('greeting').textContent = 'Hello ' + name;
}
show();
