# Copyright (c) 2026 The hexec Authors. All rights reserved.
