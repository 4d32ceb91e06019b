window.onmessage = (e) => {
  const cmd = e.data.cmd;
  return cmd;
};
