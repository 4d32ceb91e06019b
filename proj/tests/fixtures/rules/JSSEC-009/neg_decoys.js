// eval(userInput) was removed
const help = 'never call eval() on input';
/* new Function('x') */
module.exports = help;
