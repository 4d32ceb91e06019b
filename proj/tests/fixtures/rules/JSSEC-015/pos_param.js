const params = new URLSearchParams(location.search);
window.location.href = params.get('next');
