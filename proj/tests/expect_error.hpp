#pragma once

#include "qm/errors.hpp"

#include <gtest/gtest.h>

#define EXPECT_QM_ERROR(stmt, expected)                                                   \
    do {                                                                                  \
        try {                                                                             \
            stmt;                                                                         \
            ADD_FAILURE() << #stmt " did not throw";                                      \
        } catch (const qm::QmError& e_) {                                                 \
            EXPECT_EQ(qm::error_code_name(e_.code()), qm::error_code_name(expected)) << e_.what(); \
        }                                                                                 \
    } while (0)
