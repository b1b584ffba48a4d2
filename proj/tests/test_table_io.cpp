#include "doctest.h"

#include "grasscoh/table_io.hpp"

using namespace grasscoh;

namespace {

TableModel table_for(const std::string& name, RingMode mode = RingMode::Graded) {
    return multiplication_table(build_ring(lookup(name), mode));
}

}  // namespace

TEST_CASE("text table for p=q=1 (golden)") {
    auto t = table_for("Gr_1(C^2)");
    CHECK(emit_text(t) ==
          "*  | r1\n"
          "r1 | 0\n");
}

TEST_CASE("clifford p=q=1 table has r1*r1 = 1/4") {
    auto t = table_for("Gr_1(C^2)", RingMode::Clifford);
    CHECK(t.entries[1][1] == "1/4");
}

TEST_CASE("tables are symmetric and deterministic") {
    for (const char* name : {"Gr_2(C^5)", "LGr(C^6)", "LGr*(H^4)"}) {
        auto t = table_for(name);
        bool commutative = std::string(name) != "LGr*(H^4)";
        for (size_t i = 0; commutative && i < t.basis.size(); ++i)
            for (size_t j = 0; j < t.basis.size(); ++j)
                CHECK(t.entries[i][j] == t.entries[j][i]);
        auto t2 = table_for(name);
        CHECK(t.same_data(t2));
        CHECK(emit_text(t) == emit_text(t2));
        CHECK(emit_json(t) == emit_json(t2));
        CHECK(emit_csv(t) == emit_csv(t2));
        CHECK(emit_latex(t) == emit_latex(t2));
    }
}

TEST_CASE("json round-trips to equal data") {
    for (const char* name : {"Gr_1(C^3)", "LGr(C^4)", "HLGr(C^4)"}) {
        auto t = table_for(name);
        auto parsed = table_from_json(emit_json(t));
        CHECK(t.same_data(parsed));
    }
}

TEST_CASE("csv uses exact rationals") {
    auto t = table_for("Gr_1(C^2)", RingMode::Clifford);
    std::string csv = emit_csv(t);
    CHECK(csv.find("1/4") != std::string::npos);
    CHECK(csv.find('.') == std::string::npos);
}

TEST_CASE("latex layout has an upper triangle") {
    auto t = table_for("Gr_1(C^3)");
    std::string tex = emit_latex(t);
    CHECK(tex.find("\\begin{tabular}") == 0);
    CHECK(tex.find("$r_1$") != std::string::npos);
    // the (2,1) cell below the diagonal is blank: "& " directly followed by &
    CHECK(tex.find("$r_1^2$ &  & $0$ \\\\") != std::string::npos);
}

TEST_CASE("format parsing") {
    CHECK(parse_format("json") == OutputFormat::Json);
    CHECK_THROWS_AS(parse_format("yaml"), range_error);
}

TEST_CASE("thread cap from the environment is respected") {
    // worker_threads never exceeds the task count and honors the cap
    setenv("GRASSCOH_THREADS", "1", 1);
    CHECK(worker_threads(100) == 1);
    unsetenv("GRASSCOH_THREADS");
    CHECK(worker_threads(1) == 1);
    // parallel generation agrees with the serial one
    setenv("GRASSCOH_THREADS", "2", 1);
    auto t2 = table_for("Gr_2(C^5)");
    setenv("GRASSCOH_THREADS", "1", 1);
    auto t1 = table_for("Gr_2(C^5)");
    unsetenv("GRASSCOH_THREADS");
    CHECK(t1.same_data(t2));
}
