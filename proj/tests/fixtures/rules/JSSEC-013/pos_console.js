function total(items) {
  console.log('items', items.length);
  let sum = 0;
  for (const i of items) sum += i.price;
  console.debug(sum);
  return sum;
}
module.exports = total;
