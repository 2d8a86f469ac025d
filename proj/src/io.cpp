// Copyright 2026 The isolab developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "isolab/io.hpp"

#include <fstream>

#include "isolab/errors.hpp"

namespace isolab {

namespace {

template <int N>
Eigen::Matrix<double, N, N> real_matrix(const Json& j, const char* what) {
  if (!j.is_array() || j.size() != N)
    throw InvalidInputError(std::string(what) + " must be a " +
                            std::to_string(N) + "x" + std::to_string(N) +
                            " array");
  Eigen::Matrix<double, N, N> m;
  for (int r = 0; r < N; ++r) {
    if (!j[r].is_array() || j[r].size() != N)
      throw InvalidInputError(std::string(what) + " row " + std::to_string(r) +
                              " must have " + std::to_string(N) + " entries");
    for (int c = 0; c < N; ++c) m(r, c) = j[r][c].get<double>();
  }
  return m;
}

Vec3 vec3(const Json& j, const char* what) {
  if (!j.is_array() || j.size() != 3)
    throw InvalidInputError(std::string(what) + " must be a 3-vector");
  return Vec3(j[0].get<double>(), j[1].get<double>(), j[2].get<double>());
}

template <int N>
Eigen::Matrix<std::complex<double>, N, N> complex_matrix(const Json& j,
                                                         const char* what) {
  const auto re = real_matrix<N>(j.at("re"), what);
  Eigen::Matrix<double, N, N> im = Eigen::Matrix<double, N, N>::Zero();
  if (j.contains("im")) im = real_matrix<N>(j.at("im"), what);
  return re.template cast<std::complex<double>>() +
         std::complex<double>(0, 1) * im.template cast<std::complex<double>>();
}

template <int N>
void put_complex_matrix(Json& j, const Eigen::Matrix<std::complex<double>, N, N>& m) {
  Json re = Json::array(), im = Json::array();
  for (int r = 0; r < N; ++r) {
    Json re_row = Json::array(), im_row = Json::array();
    for (int c = 0; c < N; ++c) {
      re_row.push_back(m(r, c).real());
      im_row.push_back(m(r, c).imag());
    }
    re.push_back(re_row);
    im.push_back(im_row);
  }
  j["re"] = re;
  j["im"] = im;
}

Json vec_json(const Vec3& v) { return Json::array({v[0], v[1], v[2]}); }

Json mat3_json(const Mat3& m) {
  Json rows = Json::array();
  for (int r = 0; r < 3; ++r)
    rows.push_back(Json::array({m(r, 0), m(r, 1), m(r, 2)}));
  return rows;
}

}  // namespace

DensityMatrix4 state_from_json(const Json& j) {
  try {
    if (j.contains("re")) return DensityMatrix4(complex_matrix<4>(j, "state"));
    if (j.contains("a") || j.contains("T")) {
      PauliForm pf;
      if (j.contains("a")) pf.a = vec3(j.at("a"), "a");
      if (j.contains("b")) pf.b = vec3(j.at("b"), "b");
      if (j.contains("T")) pf.T = real_matrix<3>(j.at("T"), "T");
      return compose(pf);
    }
  } catch (const Json::exception& e) {
    throw InvalidInputError(std::string("malformed state JSON: ") + e.what());
  }
  throw InvalidInputError(
      "state JSON needs either {re, im} or {a, b, T} fields");
}

Json state_to_json(const DensityMatrix4& rho) {
  Json j;
  put_complex_matrix<4>(j, rho.matrix());
  const PauliForm pf = decompose(rho);
  j["a"] = vec_json(pf.a);
  j["b"] = vec_json(pf.b);
  j["T"] = mat3_json(pf.T);
  return j;
}

SubgroupDescriptor descriptor_from_json(const Json& j) {
  try {
    const SubgroupClass cls =
        subgroup_class_from_string(j.at("class").get<std::string>());
    switch (cls) {
      case SubgroupClass::Z2: return SubgroupDescriptor::z2();
      case SubgroupClass::SU2: return SubgroupDescriptor::su2();
      case SubgroupClass::Z4:
        return SubgroupDescriptor::z4(vec3(j.at("axis"), "axis"));
      case SubgroupClass::U1:
        return SubgroupDescriptor::u1(vec3(j.at("axis"), "axis"));
      case SubgroupClass::Kinf: {
        const Vec3 axis = vec3(j.at("axis"), "axis");
        if (j.contains("pi_axis"))
          return SubgroupDescriptor::kinf(axis, vec3(j.at("pi_axis"), "pi_axis"));
        return SubgroupDescriptor::kinf(axis);
      }
      case SubgroupClass::K2: {
        const Json& f = j.at("frame");
        if (!f.is_array() || f.size() != 3)
          throw InvalidInputError("K2 frame must list three axes");
        Mat3 frame;
        for (int i = 0; i < 3; ++i)
          frame.col(i) = vec3(f[i], "frame axis").normalized();
        if (frame.determinant() < 0) frame.col(2) *= -1.0;
        return SubgroupDescriptor::k2(frame);
      }
    }
  } catch (const Json::exception& e) {
    throw InvalidInputError(std::string("malformed group JSON: ") + e.what());
  }
  throw InvalidInputError("unrecognized group JSON");
}

Json descriptor_to_json(const SubgroupDescriptor& d) {
  Json j;
  j["class"] = to_string(d.cls);
  switch (d.cls) {
    case SubgroupClass::Z4:
    case SubgroupClass::U1:
      j["axis"] = vec_json(d.axis);
      break;
    case SubgroupClass::Kinf:
      j["axis"] = vec_json(d.axis);
      j["pi_axis"] = vec_json(d.pi_axis);
      break;
    case SubgroupClass::K2:
      j["frame"] = Json::array({vec_json(d.frame.col(0)),
                                vec_json(d.frame.col(1)),
                                vec_json(d.frame.col(2))});
      break;
    default:
      break;
  }
  return j;
}

QubitChannelPTM channel_from_json(const Json& j) {
  try {
    if (j.contains("kraus")) {
      std::vector<Mat2c> kraus;
      for (const Json& k : j.at("kraus"))
        kraus.push_back(complex_matrix<2>(k, "kraus"));
      return ptm_from_kraus(kraus);
    }
    if (j.contains("lambda")) {
      QubitChannelPTM ch;
      ch.lambda = real_matrix<3>(j.at("lambda"), "lambda");
      ch.t = j.contains("t") ? vec3(j.at("t"), "t") : Vec3::Zero();
      return ch;
    }
  } catch (const Json::exception& e) {
    throw InvalidInputError(std::string("malformed channel JSON: ") + e.what());
  }
  throw InvalidInputError("channel JSON needs either kraus or lambda fields");
}

Json channel_to_json(const QubitChannelPTM& ch) {
  Json j;
  j["lambda"] = mat3_json(ch.lambda);
  j["t"] = vec_json(ch.t);
  return j;
}

Json report_to_json(const IsotropyReport& rep) {
  Json j;
  j["class"] = to_string(rep.descriptor.cls);
  j["shape"] = to_string(rep.shape);
  j["continuous_dim"] = rep.continuous_dim;
  Json group = descriptor_to_json(rep.descriptor);
  group.erase("class");
  if (!group.empty()) j["group"] = group;
  if (!rep.pi_axes.empty()) {
    Json axes = Json::array();
    for (const Vec3& u : rep.pi_axes) axes.push_back(vec_json(u));
    j["pi_axes"] = axes;
  }
  Json res;
  for (const auto& [name, value] : rep.residuals) res[name] = value;
  j["residuals"] = res;
  return j;
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInputError("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw InvalidInputError("cannot parse '" + path + "': " + e.what());
  }
}

}  // namespace isolab
