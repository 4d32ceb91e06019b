window.addEventListener('message', function (event) {
  document.getElementById('out').textContent = event.data;
});
