#include "doctest.h"
#include "hperc/io.hpp"
#include "support.hpp"

using namespace hperc;
using support::cells;

TEST_CASE("instance round trip") {
  std::mt19937_64 rng(31);
  for (const auto& [dims, params] : {std::pair{std::vector<int>{5, 6}, Params{2, 2}}, std::pair{std::vector<int>{3, 3, 3}, Params{2, 3}},
                                     std::pair{std::vector<int>{7}, Params{4, 1}}, std::pair{std::vector<int>{2, 3, 2, 3}, Params{2, 2}}}) {
    for (int trial = 0; trial < 50; ++trial) {
      const Instance in{support::random_set(GridShape(dims), rng, 0.4), params};
      CHECK(parse_instance(to_json(in).dump()) == in);
      CHECK(parse_instance(to_json(in).dump(2)) == in);
    }
  }
}

TEST_CASE("instance format") {
  const Instance in{cells(GridShape{2, 3}, {{2, 3}, {1, 1}}), Params{2, 2}};
  CHECK(to_json(in).dump() == R"({"shape":[2,3],"t":2,"r":2,"cells":[[1,1],[2,3]]})");
}

TEST_CASE("invalid instances are rejected") {
  const char* bad[] = {
      R"({"shape":[3,3],"t":2,"r":2,"cells":[[1,1],[4,1]]})",
      R"({"shape":[3,3],"t":2,"r":2,"cells":[[1,1],[1,1]]})",
      R"({"shape":[3,3],"t":2,"r":2,"cells":[[1,1,1]]})",
      R"({"shape":[3,3],"t":2,"r":2,"cells":[[0,1]]})",
      R"({"shape":[3,3],"t":1,"r":2,"cells":[]})",
      R"({"shape":[3,3],"t":2,"r":3,"cells":[]})",
      R"({"shape":[],"t":2,"r":1,"cells":[]})",
      R"({"shape":[3,0],"t":2,"r":1,"cells":[]})",
      R"({"shape":[3,3],"t":2,"cells":[]})",
      R"({"shape":[3,3],"t":2.5,"r":2,"cells":[]})",
      R"({"shape":[3,3],"t":2,"r":2,"cells":{}})",
      R"({"shape":[3,3],"t":2,"r":2,"cells":[[1,"a"]]})",
      R"([1,2,3])",
      R"({"shape":[3,3],"t":2,)",
      R"({"shape":[3,3],"t":99999999999,"r":2,"cells":[]})",
  };
  for (const char* text : bad) {
    CAPTURE(text);
    CHECK_THROWS_AS((parse_instance(text)), InvalidInput);
  }
}

TEST_CASE("edge encoding") {
  const GridShape s{3, 5, 2};
  const Params p{2, 2};
  const Edge e(s, p, {{1, 2}, {1, 5}, {2}});
  const Json j = to_json(e);
  CHECK(j.dump() == R"({"axes":[1,2],"varying":{"1":[1,2],"2":[1,5]},"fixed":{"3":2}})");
  CHECK(edge_from_json(j, s, p) == e);
  CHECK_THROWS_AS((edge_from_json(parse_json(R"({"axes":[1,3],"varying":{"1":[1,2],"2":[1,5]},"fixed":{"3":2}})"), s, p)),
                  InvalidInput);
  CHECK_THROWS_AS((edge_from_json(parse_json(R"({"varying":{"1":[1,2],"2":[1,5]},"fixed":{}})"), s, p)), InvalidInput);
  CHECK_THROWS_AS((edge_from_json(parse_json(R"({"varying":{"1":[1,2],"x":[1,5]},"fixed":{"3":2}})"), s, p)), InvalidInput);
  CHECK_THROWS_AS((edge_from_json(parse_json(R"({"varying":{"1":[1,2],"2":[1,5]},"fixed":{"2":1,"3":2}})"), s, p)), InvalidInput);
}

TEST_CASE("trace round trips") {
  const GridShape s{4, 4};
  const Params p{2, 2};
  const CellSet a = cells(s, {{1, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 1}});
  const FullForm ff = full_form(a, p);
  const Json pj = parse_json(to_json(ff.trace, p).dump());
  CHECK(pj["f"] == ff.trace.terminal_phase());
  CHECK(phase_trace_from_json(pj, s).phases == ff.trace.phases);

  const StepTrace st = step_by_step(a, p, Selection::random(2));
  const StepTrace back = step_trace_from_json(parse_json(to_json(st, p).dump()), s, p);
  CHECK(back.start == st.start);
  REQUIRE(back.steps.size() == st.steps.size());
  for (std::size_t i = 0; i < st.steps.size(); ++i) {
    CHECK(back.steps[i].infected == st.steps[i].infected);
    CHECK(back.steps[i].edge == st.steps[i].edge);
  }
  CHECK_THROWS_AS((phase_trace_from_json(parse_json(R"({"phases":[[[1,1],[2,2]],[[1,1]]]})"), s)), InvalidInput);
}

TEST_CASE("search csv row") {
  SearchReport r;
  r.shape = GridShape{3, 3};
  r.params = Params{2, 2};
  r.minimum = 5;
  r.examined_per_size = {1, 9, 36, 84, 126, 7};
  r.duration_ms = 1.5;
  r.exhaustive = true;
  CHECK(search_csv_row(r) == "3x3,2,2,percolate,5,263,1.500,true");
  r.minimum.reset();
  r.exhaustive = false;
  r.target = Target::one_phase;
  CHECK(search_csv_row(r).starts_with("3x3,2,2,one-phase,,"));
  CHECK(std::string(kSearchCsvHeader) == "shape,t,r,target,minimum,examined,duration_ms,exact");
}
