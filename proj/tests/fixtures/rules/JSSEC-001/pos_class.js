// service facade
class Registry {
  m0() {
    return 0;
  }
  m1() {
    return 1;
  }
  m2() {
    return 2;
  }
  m3() {
    return 3;
  }
  m4() {
    return 4;
  }
  m5() {
    return 5;
  }
  m6() {
    return 6;
  }
  m7() {
    return 7;
  }
  m8() {
    return 8;
  }
  m9() {
    return 9;
  }
  m10() {
    return 10;
  }
  m11() {
    return 11;
  }
  m12() {
    return 12;
  }
  m13() {
    return 13;
  }
  m14() {
    return 14;
  }
  m15() {
    return 15;
  }
  m16() {
    return 16;
  }
  m17() {
    return 17;
  }
  m18() {
    return 18;
  }
  m19() {
    return 19;
  }
  m20() {
    return 20;
  }
}
module.exports = Registry;
