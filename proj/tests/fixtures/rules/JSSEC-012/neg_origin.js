function share(frame, data) {
  frame.contentWindow.postMessage(data, 'https://app.example.com');
}
window.addEventListener('message', function (event) {
  if (event.origin !== 'https://app.example.com') return;
  document.getElementById('out').textContent = event.data;
});
module.exports = share;
