const dbPassword = process.env.DB_PASSWORD;
const config = {
  apiKey: process.env.API_KEY,
  url: 'mongodb://db.example.com:27017/shop',
};
module.exports = { dbPassword, config };
