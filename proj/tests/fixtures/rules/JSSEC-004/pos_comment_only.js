function load(text) {
  try {
    return JSON.parse(text);
  } catch {
    // ignore
  }
  return null;
}
module.exports = load;
