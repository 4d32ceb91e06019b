const render = (parts) => {
    parts.push('0');

    // step 0
    parts.push('1');

    // step 1
    parts.push('2');

    // step 2
    parts.push('3');

    // step 3
    parts.push('4');

    // step 4
    parts.push('5');

    // step 5
    parts.push('6');

    // step 6
    parts.push('7');

    // step 7
    parts.push('8');

    // step 8
    parts.push('9');

    // step 9
    parts.push('10');

    // step 10
    parts.push('11');

    // step 11
    parts.push('12');

    // step 12
    parts.push('13');

    // step 13
    parts.push('14');

    // step 14
    parts.push('15');

    // step 15
    parts.push('16');

    // step 16
    parts.push('17');

    // step 17
    parts.push('18');

    // step 18
    parts.push('19');

    // step 19
    parts.push('20');

    // step 20
    parts.push('21');

    // step 21
    parts.push('22');

    // step 22
    parts.push('23');

    // step 23
    parts.push('24');

    // step 24
    parts.push('25');

    // step 25
    parts.push('26');

    // step 26
    parts.push('27');

    // step 27
    parts.push('28');

    // step 28
    parts.push('29');

    // step 29
    parts.push('30');

    // step 30
    parts.push('31');

    // step 31
    parts.push('32');

    // step 32
    parts.push('33');

    // step 33
    parts.push('34');

    // step 34
    parts.push('35');

    // step 35
    parts.push('36');

    // step 36
    parts.push('37');

    // step 37
    parts.push('38');

    // step 38
    parts.push('39');

    // step 39
    parts.push('40');

    // step 40
    parts.push('41');

    // step 41
    parts.push('42');

    // step 42
    parts.push('43');

    // step 43
    parts.push('44');

    // step 44
    parts.push('45');

    // step 45
    parts.push('46');

    // step 46
    parts.push('47');

    // step 47
    parts.push('48');

    // step 48
    parts.push('49');

    // step 49
    parts.push('50');

    // step 50
    parts.push('51');

    // step 51
    parts.push('52');

    // step 52
    parts.push('53');

    // step 53
    parts.push('54');

    // step 54
    parts.push('55');

    // step 55
    parts.push('56');

    // step 56
    parts.push('57');

    // step 57
  };
module.exports = render;
