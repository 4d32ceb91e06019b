setTimeout(function () {
  setTimeout(function () {
    setTimeout(function () {
      setTimeout(function () {
        process.stdout.write('done');
      }, 10);
    }, 10);
  }, 10);
}, 10);
