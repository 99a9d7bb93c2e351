#include "ghostalg/linking.hpp"

namespace ghost {

template class LinkingStructure<BoundaryPoint>;

}  // namespace ghost
