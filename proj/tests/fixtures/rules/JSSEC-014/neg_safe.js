function reset(el, html) {
  el.innerHTML = '<b>ready</b>';
  el.innerHTML = DOMPurify.sanitize(html);
  el.outerHTML = '';
}
module.exports = reset;
