#include <doctest.h>

#include <sstream>

#include "sentipulse/ingest.hpp"

using namespace sentipulse;

namespace {

const char* kGoodTweets =
    "id,start,end,text\n"
    "t1,2023-02-15T14:30:00Z,2023-02-15T14:31:00Z,solid results\n"
    "t2,2023-02-15T15:00:00Z,2023-02-15T15:05:00Z,\"up, and away\"\n"
    "t3,2023-02-15T15:30:00Z,2023-02-15T15:30:00Z,meh\n";

const char* kGoodBars =
    "timestamp,open,high,low,close,adj_close,volume\n"
    "2023-02-15T09:30:00-05:00,100,101,99.5,100.5,100.2,1000\n"
    "2023-02-15T10:30:00-05:00,100.5,102,100,101,100.7,1100\n"
    "2023-02-15T11:30:00-05:00,101,101.5,100.2,100.4,100.1,900\n"
    "2023-02-15T12:30:00-05:00,100.4,100.9,99.9,100.0,99.7,800\n"
    "2023-02-15T13:30:00-05:00,100.0,100.8,99.8,100.6,100.3,950\n"
    "2023-02-15T14:30:00-05:00,100.6,101.2,100.4,101.0,100.7,1200\n"
    "2023-02-15T15:30:00-05:00,101.0,101.4,100.8,101.2,100.9,1300\n";

}  // namespace

TEST_CASE("parse_tweets") {
    SUBCASE("three well-formed rows") {
        std::istringstream in(kGoodTweets);
        const auto tweets = parse_tweets(in, "Pfizer");
        REQUIRE(tweets.size() == 3);
        CHECK(tweets[0].tweet_id == "t1");
        CHECK(tweets[0].query == "Pfizer");
        CHECK(tweets[1].text == "up, and away");  // quoted comma intact
    }
    SUBCASE("end before start is a row error with line number") {
        std::istringstream in(
            "id,start,end,text\n"
            "t1,2023-02-15T14:30:00Z,2023-02-15T14:31:00Z,fine\n"
            "t2,2023-02-15T15:00:00Z,2023-02-15T14:00:00Z,backwards\n");
        CHECK_THROWS_WITH_AS(parse_tweets(in, "q"),
                             doctest::Contains("line 3"), RowError);
    }
    SUBCASE("bad timestamp aborts by default, skips under policy") {
        const char* input =
            "id,start,end,text\n"
            "t1,2023-02-15T14:30:00Z,2023-02-15T14:31:00Z,fine\n"
            "t2,yesterday,2023-02-15T14:00:00Z,bad\n"
            "t3,2023-02-15T16:30:00Z,2023-02-15T16:31:00Z,fine too\n";
        {
            std::istringstream in(input);
            CHECK_THROWS_AS(parse_tweets(in, "q"), RowError);
        }
        {
            std::istringstream in(input);
            std::vector<std::string> skipped;
            const auto tweets =
                parse_tweets(in, "q", RowErrorPolicy::Skip, &skipped);
            CHECK(tweets.size() == 2);
            REQUIRE(skipped.size() == 1);
            CHECK(skipped[0].find("line 3") != std::string::npos);
        }
    }
    SUBCASE("header is validated") {
        std::istringstream in("tweet,a,b,c\nx,y,z,w\n");
        CHECK_THROWS_AS(parse_tweets(in, "q"), RowError);
    }
}

TEST_CASE("parse_stock_bars") {
    SUBCASE("seven hourly bars") {
        std::istringstream in(kGoodBars);
        const auto bars = parse_stock_bars(in, "Pfizer");
        REQUIRE(bars.size() == 7);
        CHECK(bars.front().company == "Pfizer");
        CHECK(bars.front().open == doctest::Approx(100.0));
        CHECK(bars.back().volume == 1300);
    }
    SUBCASE("high below low is a row error") {
        std::istringstream in(
            "timestamp,open,high,low,close,adj_close,volume\n"
            "2023-02-15T09:30:00-05:00,100,99,101,100.5,100.2,1000\n");
        CHECK_THROWS_AS(parse_stock_bars(in, "X"), RowError);
    }
    SUBCASE("open outside the high-low range is a row error") {
        std::istringstream in(
            "timestamp,open,high,low,close,adj_close,volume\n"
            "2023-02-15T09:30:00-05:00,102,101,99.5,100.5,100.2,1000\n");
        CHECK_THROWS_AS(parse_stock_bars(in, "X"), RowError);
    }
    SUBCASE("unsorted input comes out sorted with content preserved") {
        std::istringstream sorted(kGoodBars);
        const auto expected = parse_stock_bars(sorted, "X");

        // permute rows: 4,1,7,3,6,2,5 of the original
        std::istringstream shuffled(
            "timestamp,open,high,low,close,adj_close,volume\n"
            "2023-02-15T12:30:00-05:00,100.4,100.9,99.9,100.0,99.7,800\n"
            "2023-02-15T09:30:00-05:00,100,101,99.5,100.5,100.2,1000\n"
            "2023-02-15T15:30:00-05:00,101.0,101.4,100.8,101.2,100.9,1300\n"
            "2023-02-15T11:30:00-05:00,101,101.5,100.2,100.4,100.1,900\n"
            "2023-02-15T14:30:00-05:00,100.6,101.2,100.4,101.0,100.7,1200\n"
            "2023-02-15T10:30:00-05:00,100.5,102,100,101,100.7,1100\n"
            "2023-02-15T13:30:00-05:00,100.0,100.8,99.8,100.6,100.3,950\n");
        const auto bars = parse_stock_bars(shuffled, "X");
        REQUIRE(bars.size() == expected.size());
        for (std::size_t i = 0; i < bars.size(); ++i) {
            CHECK(bars[i].timestamp == expected[i].timestamp);
            CHECK(bars[i].open == expected[i].open);
            CHECK(bars[i].volume == expected[i].volume);
        }
    }
    SUBCASE("duplicate timestamp is an error") {
        std::istringstream in(
            "timestamp,open,high,low,close,adj_close,volume\n"
            "2023-02-15T09:30:00-05:00,100,101,99.5,100.5,100.2,1000\n"
            "2023-02-15T09:30:00-05:00,100,101,99.5,100.5,100.2,1000\n");
        CHECK_THROWS_WITH_AS(parse_stock_bars(in, "X"),
                             doctest::Contains("duplicate"), RowError);
    }
    SUBCASE("negative price rejected") {
        std::istringstream in(
            "timestamp,open,high,low,close,adj_close,volume\n"
            "2023-02-15T09:30:00-05:00,-5,1,-6,0.5,0.4,10\n");
        CHECK_THROWS_AS(parse_stock_bars(in, "X"), RowError);
    }
}

TEST_CASE("parse-serialize-parse is the identity") {
    std::istringstream tin(kGoodTweets);
    const auto tweets = parse_tweets(tin, "Pfizer");
    std::ostringstream tout;
    write_tweets(tout, tweets);
    std::istringstream tback(tout.str());
    const auto tweets2 = parse_tweets(tback, "Pfizer");
    REQUIRE(tweets2.size() == tweets.size());
    for (std::size_t i = 0; i < tweets.size(); ++i) {
        CHECK(tweets2[i].tweet_id == tweets[i].tweet_id);
        CHECK(tweets2[i].window_start == tweets[i].window_start);
        CHECK(tweets2[i].window_end == tweets[i].window_end);
        CHECK(tweets2[i].text == tweets[i].text);
    }

    std::istringstream bin(kGoodBars);
    const auto bars = parse_stock_bars(bin, "Pfizer");
    std::ostringstream bout;
    write_stock_bars(bout, bars);
    std::istringstream bback(bout.str());
    const auto bars2 = parse_stock_bars(bback, "Pfizer");
    REQUIRE(bars2.size() == bars.size());
    for (std::size_t i = 0; i < bars.size(); ++i) {
        CHECK(bars2[i].timestamp == bars[i].timestamp);
        CHECK(bars2[i].open == bars[i].open);
        CHECK(bars2[i].high == bars[i].high);
        CHECK(bars2[i].low == bars[i].low);
        CHECK(bars2[i].close == bars[i].close);
        CHECK(bars2[i].adj_close == bars[i].adj_close);
        CHECK(bars2[i].volume == bars[i].volume);
    }
}
