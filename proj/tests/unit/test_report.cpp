#include "helpers.hpp"
#include "modpar/io.hpp"
#include "modpar/report.hpp"

using namespace testing;

TEST_SUITE("report") {
  TEST_CASE("gb document") {
    const Ideal I = parse_ideal_file("ring x, y : dp;\nideal: x^2 - 1, y^2 - 3*y + 2;");
    const CommandResult r = run_command("gb", I, quick_config(5));
    CHECK(r.document["command"] == "gb");
    CHECK(r.document["seed"] == 5);
    CHECK(r.document["result"] == Json::array({"x^2 - 1", "y^2 - 3*y + 2"}));
    CHECK(r.document.contains("timings"));
    CHECK(r.lines == std::vector<std::string>{"x^2 - 1", "y^2 - 3*y + 2"});
    const std::string dump = deterministic_dump(r.document);
    CHECK(dump.find("timings") == std::string::npos);
    CHECK(dump == deterministic_dump(run_command("gb", I, quick_config(5, 4)).document));
  }

  TEST_CASE("every command runs") {
    const Ideal I = parse_ideal_file("ring x, y : dp;\nideal: x^2, y^2 - 1;");
    for (const char* cmd : {"gb", "radical", "assprimes", "primary"}) {
      const CommandResult r = run_command(cmd, I, quick_config());
      CHECK(r.document["command"] == cmd);
      CHECK_FALSE(r.lines.empty());
    }
    CHECK(run_command("radical", I, quick_config()).lines == std::vector<std::string>{"y^2 - 1", "x"});
    CHECK_THROWS_AS(run_command("frobnicate", I, quick_config()), std::invalid_argument);
    CHECK_THROWS_AS(run_command("factor", I, quick_config()), std::invalid_argument);
  }

  TEST_CASE("factor lines") {
    const Ideal I = parse_ideal_file("ring x : lp;\nideal: x^4 - 1, 1/2*x - 3;");
    const CommandResult r = run_command("factor", I, quick_config());
    CHECK(r.lines ==
          std::vector<std::string>{"x^4 - 1 = 1 * (x - 1) * (x + 1) * (x^2 + 1)", "1/2*x - 3 = 1/2 * (x - 6)"});
  }
}
