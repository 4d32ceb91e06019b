(function () {
  var v0 = 0;
  var v1 = 1;
  var v2 = 2;
  var v3 = 3;
  var v4 = 4;
  var v5 = 5;
  var v6 = 6;
  var v7 = 7;
  var v8 = 8;
  var v9 = 9;
  var v10 = 10;
  var v11 = 11;
  var v12 = 12;
  var v13 = 13;
  var v14 = 14;
  window.app = v0 + v14;
})();
