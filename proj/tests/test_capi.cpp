#include <string>

#include "doctest.h"
#include "json.hpp"
#include "quatorder/quatorder.h"

using nlohmann::json;

namespace {

struct Ctx {
  qo_context* c = qo_context_new();
  ~Ctx() { qo_context_free(c); }
};

template <class F>
json call(qo_status expect, F&& f) {
  char* out = nullptr;
  CHECK(f(&out) == expect);
  json j;
  if (out) {
    j = json::parse(out);
    qo_string_free(out);
  }
  return j;
}

}  // namespace

TEST_CASE("construct through the C API") {
  Ctx ctx;
  char* out = nullptr;
  json j = call(QO_OK, [&](char** o) { return qo_construct(ctx.c, 35, 3, o); });
  CHECK(j["p"] == 13);
  CHECK(j["a"] == 5);
  CHECK(j["e4"] == "(525j+k)/13");
  CHECK(std::string(qo_last_error(ctx.c)).empty());

  CHECK(qo_construct(ctx.c, 3, 1, &out) == QO_INVALID);
  CHECK(out == nullptr);
  CHECK(std::string(qo_last_error_kind(ctx.c)) == "InvalidParameters");
}

TEST_CASE("status mapping") {
  Ctx ctx;
  char* out = nullptr;
  CHECK(qo_split(ctx.c, 35, 3, "5", &out) == QO_OK);
  qo_string_free(out);
  CHECK(qo_split(ctx.c, 35, 3, "2", &out) == QO_UNSUPPORTED);
  CHECK(qo_split(ctx.c, 35, 3, "9", &out) == QO_INVALID);
  CHECK(qo_split(ctx.c, 35, 3, "abc", &out) == QO_INVALID);
  CHECK(qo_degeneracy(ctx.c, 35, 3, "7", &out) == QO_UNSUPPORTED);
  CHECK(qo_degeneracy(ctx.c, 35, 3, "inf", &out) == QO_INVALID);
  CHECK(qo_chain(ctx.c, 1, "3", 8, &out) == QO_UNSUPPORTED);
  CHECK(qo_set_precision(ctx.c, 10) == QO_OK);
  CHECK(qo_chain(ctx.c, 35, "3", 12, &out) == QO_PRECISION);
  CHECK(std::string(qo_last_error_kind(ctx.c)) == "PrecisionLoss");
  CHECK(qo_set_precision(ctx.c, 0) == QO_INVALID);
  CHECK(qo_set_format(ctx.c, static_cast<qo_format>(7)) == QO_INVALID);
  CHECK(qo_construct(nullptr, 35, 3, &out) == QO_INVALID);
  CHECK(std::string(qo_status_name(QO_PRECISION)) == "precision-loss");
}

TEST_CASE("module commands") {
  Ctx ctx;
  char* out = nullptr;
  json d = call(QO_OK, [&](char** o) { return qo_degeneracy(ctx.c, 35, 3, "11", o); });
  CHECK(d["f"][1] == "(-5+i-5j+k)/2");
  CHECK(d["g"][1] == "(5+i+5j+k)/2");
  json p = call(QO_OK, [&](char** o) { return qo_psi(ctx.c, 35, 3, 17, o); });
  CHECK(p["residual"] == "0/1");
  json c = call(QO_OK, [&](char** o) { return qo_chain(ctx.c, 35, "3", 12, o); });
  CHECK(c["basis"] == json::array({"1", "(1+j)/2"}));
  CHECK(c["stabilized"] == true);
  json s = call(QO_OK, [&](char** o) { return qo_split(ctx.c, 35, 3, "p", o); });
  CHECK(s["case"] == "at-p");
  json inf = call(QO_OK, [&](char** o) { return qo_split(ctx.c, 35, 3, "inf", o); });
  CHECK(inf["case"] == "archimedean");
}

TEST_CASE("verify through the C API") {
  Ctx ctx;
  char* out = nullptr;
  json e = call(QO_OK, [&](char** o) { return qo_verify(ctx.c, nullptr, 0, nullptr, 0, nullptr, 0, 1, 1, o); });
  CHECK(e["vacuous"] == true);
  CHECK(e["checks"].empty());

  const int64_t deltas[] = {35};
  const int64_t levels[] = {3};
  const int64_t places[] = {3, 5, 7, 11};
  json ok = call(QO_OK, [&](char** o) { return qo_verify(ctx.c, deltas, 1, levels, 1, places, 1, 1, 1, o); });
  CHECK(ok["failed"] == 0);
  CHECK(ok["passed"].get<int>() > 20);

  qo_set_flip_root_sign(ctx.c, 1);
  json bad = call(QO_VERIFY_FAILED, [&](char** o) { return qo_verify(ctx.c, deltas, 1, levels, 1, places, 1, 1, 0, o); });
  CHECK(bad["failed"].get<int>() > 0);
  CHECK(std::string(qo_last_error(ctx.c)).find("split.at-p.cN") != std::string::npos);

  const int64_t notprime[] = {4};
  CHECK(qo_verify(ctx.c, deltas, 1, levels, 1, notprime, 1, 1, 1, &out) == QO_INVALID);
}

TEST_CASE("text format") {
  Ctx ctx;
  char* out = nullptr;
  qo_set_format(ctx.c, QO_FORMAT_TEXT);
  REQUIRE(qo_construct(ctx.c, 35, 3, &out) == QO_OK);
  std::string t(out);
  qo_string_free(out);
  CHECK(t.find("e4 = (525j+k)/13") != std::string::npos);
}
