function P0() {}
function P1() {}
P1.prototype = Object.create(P0.prototype);
function P2() {}
P2.prototype = Object.create(P1.prototype);
function P3() {}
P3.prototype = Object.create(P2.prototype);
function P4() {}
P4.prototype = Object.create(P3.prototype);
function P5() {}
P5.prototype = Object.create(P4.prototype);
function P6() {}
P6.prototype = Object.create(P5.prototype);
function P7() {}
P7.prototype = Object.create(P6.prototype);
function P8() {}
P8.prototype = Object.create(P7.prototype);
function P9() {}
P9.prototype = Object.create(P8.prototype);
module.exports = P9;
