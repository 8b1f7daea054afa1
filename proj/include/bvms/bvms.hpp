#ifndef BVMS_BVMS_HPP
#define BVMS_BVMS_HPP

#include "bvms/adjudicate.hpp"
#include "bvms/analysis.hpp"
#include "bvms/errors.hpp"
#include "bvms/gallery.hpp"
#include "bvms/json_io.hpp"
#include "bvms/picard.hpp"
#include "bvms/rational.hpp"
#include "bvms/space.hpp"
#include "bvms/verify.hpp"

#endif
