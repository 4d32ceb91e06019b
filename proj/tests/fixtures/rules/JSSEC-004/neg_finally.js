function run(task, done) {
  try {
    task();
  } finally {
    done();
  }
}
module.exports = run;
