const prefs = document.cookie.split('; ');
document.getElementById('name').innerHTML = prefs[0];
