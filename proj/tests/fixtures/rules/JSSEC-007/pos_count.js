var g0 = 0;
var g1 = 1;
var g2 = 2;
var g3 = 3;
var g4 = 4;
var g5 = 5;
var g6 = 6;
var g7 = 7;
var g8 = 8;
var g9 = 9;
var g10 = 10;
