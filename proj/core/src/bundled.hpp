#pragma once

#include <string_view>
#include <vector>

namespace powerexp::detail {

struct BundledBFile {
  std::string_view sequence_id;
  std::string_view text;
};

const std::vector<BundledBFile>& bundled_bfiles();

}  // namespace powerexp::detail
