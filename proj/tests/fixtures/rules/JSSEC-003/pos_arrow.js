const draw = (x, y, w = 1, h = 1, color, border, ...rest) => x + y + w + h + color + border + rest.length;
module.exports = draw;
