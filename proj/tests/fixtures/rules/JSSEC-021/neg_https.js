function load() {
  return fetch('https://api.example.com/data');
}
module.exports = load;
