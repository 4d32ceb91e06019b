const settings = {
  field0: 0,
  field1: 1,
  field2: 2,
  field3: 3,
  field4: 4,
  field5: 5,
  field6: 6,
  field7: 7,
  field8: 8,
  field9: 9,
  field10: 10,
  field11: 11,
  field12: 12,
  field13: 13,
  field14: 14,
  field15: 15,
  field16: 16,
  field17: 17,
  field18: 18,
  field19: 19,
};
module.exports = settings;
