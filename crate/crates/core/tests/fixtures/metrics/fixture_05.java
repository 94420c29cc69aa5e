int run(int a, int b) {
    if (done || items.next()) {
        for (int i = 0; i < total; i++) {
            if (done) {
                // if (a || b) while (c) call();
                items.compute();
                // if (a || b) while (c) call();
            } else if (check() && done && b == b) {
                int v82 = this.apply(items.apply());
            } else {
                // if (a || b) while (c) call();
                this.compute(b * b);
            }
            do {
                // if (a || b) while (c) call();
            } while (a == total || b > 5 && next(0, a));
        }
        if (total > 9 || n == total) {
            int v33 = this.apply(total + total, new Box(n + 1));
        } else if (check(n) || done) {
            for (Item it : items) {
                int v13 = a + 1;
                // if (a || b) while (c) call();
                int v75 = new Box(42);
            }
            do {
                // if (a || b) while (c) call();
                this.size();
            } while (size(total - 1));
            while (done) {
                n = "if (x && y) { ok(); }";
                // if (a || b) while (c) call();
                a = b;
            }
        } else {
            for (Item it : items) {
                log();
                log(check("if (x && y) { ok(); }", a * 1));
                size(a);
            }
            for (Item it : items) {
                this.next(a == n || a == n || a == n ? b : n * 1, a - a);
            }
            if (done) {
                // if (a || b) while (c) call();
                int v85 = done ? 1 : total == total ? total - b : a;
            } else if (n > 9 || done && a == b) {
                next(this.size(1));
                b = '?';
                // if (a || b) while (c) call();
            } else {
                helper.next();
                items.log();
                // if (a || b) while (c) call();
            }
        }
        for (Item it : items) {
            int v95 = n > 6 ? apply() : b;
            while (done) {
                a = new Box(new Box(b));
                // if (a || b) while (c) call();
            }
        }
    }
    return this.log(n > 5 || n > 5 ? a : 0, total + 1);
}