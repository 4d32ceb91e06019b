function show() {
  const name = location.hash.substring(1);
  document.getElementById('greeting').innerHTML = 'Hello ' + name;
}
show();
